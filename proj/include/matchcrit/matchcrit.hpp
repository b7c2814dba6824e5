#ifndef MATCHCRIT_MATCHCRIT_HPP
#define MATCHCRIT_MATCHCRIT_HPP

#include "matchcrit/poly.hpp"
#include "matchcrit/real_roots.hpp"
#include "matchcrit/factor.hpp"
#include "matchcrit/algebraic.hpp"
#include "matchcrit/graph.hpp"
#include "matchcrit/graph6.hpp"
#include "matchcrit/canonical.hpp"
#include "matchcrit/matching.hpp"
#include "matchcrit/path_tree.hpp"
#include "matchcrit/criticality.hpp"
#include "matchcrit/families.hpp"
#include "matchcrit/enumerate.hpp"
#include "matchcrit/parallel.hpp"
#include "matchcrit/verify.hpp"

#endif  // MATCHCRIT_MATCHCRIT_HPP
