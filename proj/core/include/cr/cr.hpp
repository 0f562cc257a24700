#pragma once

#include "cr/bounds.hpp"
#include "cr/cantor.hpp"
#include "cr/errors.hpp"
#include "cr/fraction.hpp"
#include "cr/integer.hpp"
#include "cr/numtheory.hpp"
#include "cr/orbit.hpp"
#include "cr/orders.hpp"
#include "cr/serialize.hpp"
