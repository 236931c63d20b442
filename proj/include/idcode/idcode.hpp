#pragma once

#include "bounds.hpp"
#include "codes.hpp"
#include "codespec.hpp"
#include "constructions.hpp"
#include "error.hpp"
#include "lattice.hpp"
#include "patterns.hpp"
#include "rational.hpp"
#include "render.hpp"
#include "table.hpp"
#include "verify.hpp"
