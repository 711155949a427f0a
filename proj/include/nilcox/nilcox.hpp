#pragma once

#include "config.hpp"
#include "coxeter.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "morphism.hpp"
#include "nilalg.hpp"
#include "parse.hpp"
#include "rational.hpp"
#include "selftest.hpp"
#include "serialize.hpp"
#include "trimat.hpp"
#include "typeatilde.hpp"
