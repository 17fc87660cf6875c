#pragma once

#include "gtrel/error.hpp"
#include "gtrel/rational.hpp"
#include "gtrel/tableau.hpp"
#include "gtrel/relations.hpp"
#include "gtrel/basis.hpp"
#include "gtrel/classify.hpp"
#include "gtrel/constructors.hpp"
#include "gtrel/action.hpp"
#include "gtrel/localization.hpp"
#include "gtrel/minimal_orbit.hpp"
#include "gtrel/json_io.hpp"
