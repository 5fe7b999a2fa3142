#pragma once

#include "rbch/errors.hpp"
#include "rbch/field.hpp"
#include "rbch/cosets.hpp"
#include "rbch/polynomial.hpp"
#include "rbch/bch.hpp"
#include "rbch/theory.hpp"
#include "rbch/distance.hpp"
