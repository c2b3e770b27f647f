#pragma once

#include "hibi/class_group.hpp"
#include "hibi/classify.hpp"
#include "hibi/divisorial.hpp"
#include "hibi/integer.hpp"
#include "hibi/lp.hpp"
#include "hibi/mcm.hpp"
#include "hibi/nccr.hpp"
#include "hibi/poset.hpp"
#include "hibi/rank1.hpp"
#include "hibi/semigroup.hpp"
