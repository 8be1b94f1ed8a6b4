#pragma once

#include "prset/errors.hpp"
#include "prset/finite_set.hpp"
#include "prset/window_set.hpp"
#include "prset/arith.hpp"
#include "prset/pset.hpp"
#include "prset/rule.hpp"
#include "prset/aprac.hpp"
#include "prset/dynamics.hpp"
#include "prset/verify.hpp"
#include "prset/format.hpp"
