#pragma once

#include "qseries/bailey_a1.hpp"
#include "qseries/bailey_a2.hpp"
#include "qseries/catalog/registry.hpp"
#include "qseries/hypergeometric.hpp"
#include "qseries/kostka.hpp"
#include "qseries/laurent_series.hpp"
#include "qseries/partition.hpp"
#include "qseries/permutation.hpp"
#include "qseries/pochhammer.hpp"
#include "qseries/products.hpp"
#include "qseries/qbinomial.hpp"
#include "qseries/rational_function.hpp"
#include "qseries/serialization.hpp"
#include "qseries/supernomial.hpp"
#include "qseries/tableau.hpp"
