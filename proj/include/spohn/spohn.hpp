#pragma once

#include "spohn/core.hpp"
#include "spohn/error.hpp"
#include "spohn/kappa.hpp"
#include "spohn/oracle.hpp"
#include "spohn/prob.hpp"
#include "spohn/rational.hpp"
#include "spohn/transform.hpp"
