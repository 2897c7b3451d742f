#pragma once

#include "qnil/chain_poset.hpp"
#include "qnil/closed_forms.hpp"
#include "qnil/dnk_optimizer.hpp"
#include "qnil/gs_series.hpp"
#include "qnil/nilcheck.hpp"
#include "qnil/numeric.hpp"
#include "qnil/presentation.hpp"
