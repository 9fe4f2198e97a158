#pragma once

// Umbrella header.

#include "taquin/canonical.hpp"
#include "taquin/dcomplete.hpp"
#include "taquin/elem_set.hpp"
#include "taquin/enumeration.hpp"
#include "taquin/errors.hpp"
#include "taquin/families.hpp"
#include "taquin/jdt.hpp"
#include "taquin/json_io.hpp"
#include "taquin/numbering.hpp"
#include "taquin/poset.hpp"
#include "taquin/simultaneous.hpp"
#include "taquin/sliding.hpp"
#include "taquin/version.hpp"
