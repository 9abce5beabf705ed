#ifndef PARTPOLY_PARTPOLY_HPP
#define PARTPOLY_PARTPOLY_HPP

#include "partpoly/combinat.hpp"
#include "partpoly/common.hpp"
#include "partpoly/cyclo.hpp"
#include "partpoly/genfun.hpp"
#include "partpoly/laurent.hpp"
#include "partpoly/parallel.hpp"
#include "partpoly/qseries.hpp"
#include "partpoly/roots.hpp"
#include "partpoly/stat_table.hpp"

#endif
