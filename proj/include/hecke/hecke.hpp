#pragma once

#include "hecke/scalar.hpp"
#include "hecke/combinat.hpp"
#include "hecke/linalg.hpp"
#include "hecke/specht.hpp"
#include "hecke/roots.hpp"
