#pragma once

#include "ratpoly/errors.hpp"
#include "ratpoly/integer.hpp"
#include "ratpoly/parallel.hpp"

#include "ratpoly/geometry/canonical.hpp"
#include "ratpoly/geometry/counting.hpp"
#include "ratpoly/geometry/penumbra.hpp"
#include "ratpoly/geometry/polygon.hpp"
#include "ratpoly/geometry/reposition.hpp"
#include "ratpoly/geometry/width.hpp"

#include "ratpoly/enumeration/classify.hpp"
#include "ratpoly/enumeration/growth.hpp"
#include "ratpoly/enumeration/minimal.hpp"

#include "ratpoly/ehrhart/families.hpp"
#include "ratpoly/ehrhart/lemmas.hpp"
#include "ratpoly/ehrhart/quasi_polynomial.hpp"
#include "ratpoly/ehrhart/tuples.hpp"
#include "ratpoly/ehrhart/verify.hpp"

#include "ratpoly/io/record.hpp"
