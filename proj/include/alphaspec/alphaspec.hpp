#pragma once

#include <alphaspec/classifier.hpp>
#include <alphaspec/combinatorics.hpp>
#include <alphaspec/equitable.hpp>
#include <alphaspec/errors.hpp>
#include <alphaspec/exactpoly.hpp>
#include <alphaspec/formulas.hpp>
#include <alphaspec/graph.hpp>
#include <alphaspec/graph6.hpp>
#include <alphaspec/identities.hpp>
#include <alphaspec/search.hpp>
#include <alphaspec/spectra.hpp>
