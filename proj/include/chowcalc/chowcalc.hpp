#ifndef CHOWCALC_CHOWCALC_HPP
#define CHOWCALC_CHOWCALC_HPP

#include "chowcalc/builtins.hpp"
#include "chowcalc/documents.hpp"
#include "chowcalc/expr.hpp"
#include "chowcalc/map.hpp"
#include "chowcalc/p1.hpp"
#include "chowcalc/param_poly.hpp"
#include "chowcalc/porteous.hpp"
#include "chowcalc/rational.hpp"
#include "chowcalc/replay.hpp"
#include "chowcalc/ring.hpp"
#include "chowcalc/sheaf.hpp"

#endif
