#pragma once

#include "alt_labels.hpp"
#include "associator.hpp"
#include "geodesics.hpp"
#include "gt_basis.hpp"
#include "io.hpp"
#include "irrep_vector.hpp"
#include "matrix.hpp"
#include "partition.hpp"
#include "scalar.hpp"
#include "tableau.hpp"
#include "verify.hpp"
#include "yor.hpp"
