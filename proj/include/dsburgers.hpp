#pragma once

#include "dsburgers/config.hpp"
#include "dsburgers/driver.hpp"
#include "dsburgers/errors.hpp"
#include "dsburgers/exit_codes.hpp"
#include "dsburgers/geometry.hpp"
#include "dsburgers/godunov.hpp"
#include "dsburgers/grid.hpp"
#include "dsburgers/io.hpp"
#include "dsburgers/model.hpp"
#include "dsburgers/params.hpp"
#include "dsburgers/reference.hpp"
