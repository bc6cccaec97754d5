#ifndef ORD_ORD_HPP
#define ORD_ORD_HPP

#include "ord/bench.hpp"
#include "ord/brw.hpp"
#include "ord/cnf.hpp"
#include "ord/embed.hpp"
#include "ord/errors.hpp"
#include "ord/expr.hpp"
#include "ord/finord.hpp"
#include "ord/hierarchy.hpp"

#endif  // ORD_ORD_HPP
