#pragma once

#include "checked.hpp"
#include "components.hpp"
#include "coords.hpp"
#include "error.hpp"
#include "intersect.hpp"
#include "inversion.hpp"
#include "large.hpp"
#include "oracle.hpp"
