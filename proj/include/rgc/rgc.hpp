#pragma once

#include "rgc/errors.hpp"
#include "rgc/numeric.hpp"
#include "rgc/lie_type.hpp"
#include "rgc/weight.hpp"
#include "rgc/root_system.hpp"
#include "rgc/weyl.hpp"
#include "rgc/representation.hpp"
#include "rgc/cone.hpp"
#include "rgc/polytope.hpp"
#include "rgc/semigroup.hpp"
#include "rgc/compactification.hpp"
#include "rgc/criteria.hpp"
#include "rgc/parse.hpp"
#include "rgc/report.hpp"
#include "rgc/table2.hpp"
