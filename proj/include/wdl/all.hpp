#pragma once

#include "wdl/catalog.hpp"
#include "wdl/congruence.hpp"
#include "wdl/constructions.hpp"
#include "wdl/element_set.hpp"
#include "wdl/error.hpp"
#include "wdl/fca.hpp"
#include "wdl/filters.hpp"
#include "wdl/io.hpp"
#include "wdl/lattice.hpp"
#include "wdl/partition.hpp"
#include "wdl/random.hpp"
#include "wdl/theorems.hpp"
#include "wdl/wdl.hpp"
