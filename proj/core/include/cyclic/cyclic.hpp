#pragma once

#include "cyclic/cycle.hpp"
#include "cyclic/error.hpp"
#include "cyclic/json.hpp"
#include "cyclic/oracle.hpp"
#include "cyclic/orbit.hpp"
#include "cyclic/rational.hpp"
#include "cyclic/realization.hpp"
#include "cyclic/spectral.hpp"
#include "cyclic/transition.hpp"
