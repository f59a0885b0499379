#pragma once

#include "multizeta/asymptote.hpp"
#include "multizeta/errors.hpp"
#include "multizeta/multiple_zeta.hpp"
#include "multizeta/rational.hpp"
#include "multizeta/rouche.hpp"
#include "multizeta/special.hpp"
#include "multizeta/zeros.hpp"
