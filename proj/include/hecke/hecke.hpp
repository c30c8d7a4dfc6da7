#ifndef HECKE_HECKE_HPP
#define HECKE_HECKE_HPP

#include "hecke/rational.hpp"
#include "hecke/multi_poly.hpp"
#include "hecke/rational_fn.hpp"
#include "hecke/parse.hpp"
#include "hecke/series.hpp"
#include "hecke/delta_series.hpp"
#include "hecke/spherical.hpp"
#include "hecke/hecke_element.hpp"
#include "hecke/hecke_parse.hpp"
#include "hecke/inverse_satake.hpp"
#include "hecke/rankin.hpp"
#include "hecke/identities.hpp"
#include "hecke/rs.hpp"
#include "hecke/newton.hpp"
#include "hecke/lfactor.hpp"
#include "hecke/json_io.hpp"
#include "hecke/suites.hpp"

#endif
