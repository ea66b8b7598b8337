#pragma once

#include "ttl/braid.hpp"
#include "ttl/classifier.hpp"
#include "ttl/diagram_codes.hpp"
#include "ttl/error.hpp"
#include "ttl/formulas.hpp"
#include "ttl/params.hpp"
