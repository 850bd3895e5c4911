#pragma once

#include "turan/bounds.hpp"
#include "turan/construct.hpp"
#include "turan/error.hpp"
#include "turan/exact.hpp"
#include "turan/freeness.hpp"
#include "turan/hypergraph.hpp"
#include "turan/structure.hpp"
