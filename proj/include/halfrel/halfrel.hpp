#pragma once

// Umbrella header for the whole library.

#include "halfrel/engine.hpp"
#include "halfrel/errors.hpp"
#include "halfrel/families.hpp"
#include "halfrel/matrix.hpp"
#include "halfrel/number.hpp"
#include "halfrel/parallel.hpp"
#include "halfrel/poly.hpp"
#include "halfrel/quintic.hpp"
#include "halfrel/roots.hpp"
#include "halfrel/search.hpp"
#include "halfrel/word.hpp"
