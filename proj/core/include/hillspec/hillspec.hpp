#pragma once

#include "hillspec/error.hpp"
#include "hillspec/floquet.hpp"
#include "hillspec/gaps.hpp"
#include "hillspec/gasymov.hpp"
#include "hillspec/inverse.hpp"
#include "hillspec/isospectral.hpp"
#include "hillspec/perturbation.hpp"
#include "hillspec/potential.hpp"
#include "hillspec/spectrum.hpp"
#include "hillspec/truncation.hpp"
#include "hillspec/types.hpp"
#include "hillspec/version.hpp"
