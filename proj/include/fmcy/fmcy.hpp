#pragma once

// Umbrella header: exact charge-lattice calculus for fibrewise duality on
// elliptically fibred Calabi-Yau threefolds.

#include "fmcy/errors.hpp"
#include "fmcy/fibre_square.hpp"
#include "fmcy/fm_charges.hpp"
#include "fmcy/geometry.hpp"
#include "fmcy/kontsevich.hpp"
#include "fmcy/matrix.hpp"
#include "fmcy/models.hpp"
#include "fmcy/moduli.hpp"
#include "fmcy/multipoly.hpp"
#include "fmcy/rational.hpp"
#include "fmcy/report.hpp"
#include "fmcy/serialize.hpp"
#include "fmcy/spectral.hpp"
#include "fmcy/verify.hpp"
#include "fmcy/vertical.hpp"
