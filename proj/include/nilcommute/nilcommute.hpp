#pragma once

#include "nilcommute/ext_nat.hpp"
#include "nilcommute/partition.hpp"
#include "nilcommute/burge.hpp"
#include "nilcommute/prime_field.hpp"
#include "nilcommute/trunc_poly.hpp"
#include "nilcommute/field_matrix.hpp"
#include "nilcommute/commutator.hpp"
#include "nilcommute/tropical.hpp"
#include "nilcommute/loci.hpp"
#include "nilcommute/report.hpp"
