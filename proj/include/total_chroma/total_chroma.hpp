#pragma once

#include "total_chroma/assets.hpp"
#include "total_chroma/coloring.hpp"
#include "total_chroma/constructions.hpp"
#include "total_chroma/cycle_product.hpp"
#include "total_chroma/error.hpp"
#include "total_chroma/family.hpp"
#include "total_chroma/graph.hpp"
#include "total_chroma/io.hpp"
#include "total_chroma/quotient.hpp"
#include "total_chroma/solver.hpp"
#include "total_chroma/svg.hpp"
