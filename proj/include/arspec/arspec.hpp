#pragma once

#include "composition.hpp"
#include "integer.hpp"
#include "matrices.hpp"
#include "matrix.hpp"
#include "oracle.hpp"
#include "polynomial.hpp"
#include "report_io.hpp"
#include "sigma.hpp"
#include "spectrum.hpp"
#include "subset.hpp"
#include "suite.hpp"
#include "verification.hpp"
