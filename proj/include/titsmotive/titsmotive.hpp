#pragma once

#include <titsmotive/arith.hpp>
#include <titsmotive/poly.hpp>
#include <titsmotive/diagram.hpp>
#include <titsmotive/qform.hpp>
#include <titsmotive/brauer.hpp>
#include <titsmotive/titsindex.hpp>
#include <titsmotive/motive.hpp>
#include <titsmotive/equiv.hpp>
#include <titsmotive/json_io.hpp>
