#pragma once

#include "nil/betti.hpp"
#include "nil/cache.hpp"
#include "nil/enumerate.hpp"
#include "nil/error.hpp"
#include "nil/graph.hpp"
#include "nil/harness.hpp"
#include "nil/io.hpp"
#include "nil/limits.hpp"
#include "nil/linalg.hpp"
#include "nil/monomial.hpp"
#include "nil/simplicial.hpp"
