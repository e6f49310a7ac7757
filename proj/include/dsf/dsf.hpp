#pragma once

#include "dsf/numeric.hpp"
#include "dsf/matrix.hpp"
#include "dsf/polynomial.hpp"
#include "dsf/exact_linalg.hpp"
#include "dsf/face_system.hpp"
#include "dsf/report.hpp"
#include "dsf/bases.hpp"
#include "dsf/spaces.hpp"
#include "dsf/polytopes.hpp"
#include "dsf/enumeration.hpp"
#include "dsf/projectors.hpp"
#include "dsf/verify.hpp"
#include "dsf/io.hpp"
