#pragma once

#include "zrec/calibration.hpp"
#include "zrec/characters.hpp"
#include "zrec/fourier.hpp"
#include "zrec/gamma.hpp"
#include "zrec/lfunctions.hpp"
#include "zrec/moments.hpp"
#include "zrec/plan.hpp"
#include "zrec/proof_oracles.hpp"
#include "zrec/quadrature.hpp"
#include "zrec/report.hpp"
#include "zrec/selftest.hpp"
#include "zrec/summation.hpp"
