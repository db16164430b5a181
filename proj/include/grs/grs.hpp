#pragma once

// Umbrella header: fields, polynomials, code descriptors, the equivalence
// transforms, exact linear algebra, and the document format.

#include "grs/analysis.hpp"
#include "grs/codes.hpp"
#include "grs/errors.hpp"
#include "grs/field.hpp"
#include "grs/io.hpp"
#include "grs/matrix.hpp"
#include "grs/poly.hpp"
#include "grs/transform.hpp"
