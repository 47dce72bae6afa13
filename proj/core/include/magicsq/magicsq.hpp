// magicsq.hpp -- umbrella header

#pragma once

#include "magicsq/errors.hpp"
#include "magicsq/generate.hpp"
#include "magicsq/layers.hpp"
#include "magicsq/sevenseg.hpp"
#include "magicsq/transforms.hpp"
#include "magicsq/types.hpp"
#include "magicsq/verify.hpp"
