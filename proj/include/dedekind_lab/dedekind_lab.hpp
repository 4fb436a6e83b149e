#pragma once

#include "dedekind_lab/asymptotics.hpp"
#include "dedekind_lab/contfrac.hpp"
#include "dedekind_lab/core_arith.hpp"
#include "dedekind_lab/counting.hpp"
#include "dedekind_lab/dedekind.hpp"
#include "dedekind_lab/farey.hpp"
