#ifndef RAMALIFT_RAMALIFT_HPP
#define RAMALIFT_RAMALIFT_HPP

#include "ramalift/bounds.hpp"
#include "ramalift/expectation.hpp"
#include "ramalift/family.hpp"
#include "ramalift/graph.hpp"
#include "ramalift/io.hpp"
#include "ramalift/matching.hpp"
#include "ramalift/matrix.hpp"
#include "ramalift/numeric.hpp"
#include "ramalift/path_tree.hpp"
#include "ramalift/poly.hpp"
#include "ramalift/roots.hpp"
#include "ramalift/search.hpp"

#endif  // RAMALIFT_RAMALIFT_HPP
