#pragma once

#include "pnw/census.hpp"
#include "pnw/geometry.hpp"
#include "pnw/jumbled_index.hpp"
#include "pnw/lyndon.hpp"
#include "pnw/pnf.hpp"
#include "pnw/profiles.hpp"
#include "pnw/tables.hpp"
#include "pnw/word.hpp"
