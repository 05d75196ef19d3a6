#pragma once

#include "derivation.hpp"
#include "element.hpp"
#include "integer.hpp"
#include "monomial.hpp"
#include "operator_poly.hpp"
#include "partition.hpp"
#include "qpolynomial.hpp"
#include "schubert.hpp"
