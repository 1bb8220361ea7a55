#pragma once

#include "cobweb/bit_matrix.hpp"
#include "cobweb/chain.hpp"
#include "cobweb/cobweb_poset.hpp"
#include "cobweb/digraph.hpp"
#include "cobweb/errors.hpp"
#include "cobweb/order_core.hpp"
#include "cobweb/realizer.hpp"
#include "cobweb/relation.hpp"
#include "cobweb/vertex.hpp"
