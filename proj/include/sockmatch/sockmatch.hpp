#pragma once

#include "sockmatch/closed_form.hpp"
#include "sockmatch/count.hpp"
#include "sockmatch/numeric.hpp"
#include "sockmatch/oracle.hpp"
#include "sockmatch/recurrence.hpp"
#include "sockmatch/sampler.hpp"
#include "sockmatch/trig.hpp"
