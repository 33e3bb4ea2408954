#pragma once

// Umbrella header.

#include "bigint.hpp"
#include "identities.hpp"
#include "liftable.hpp"
#include "matrix.hpp"
#include "psi.hpp"
#include "quotient.hpp"
#include "report.hpp"
#include "rewrite.hpp"
#include "sl2.hpp"
#include "suites.hpp"
#include "word.hpp"
