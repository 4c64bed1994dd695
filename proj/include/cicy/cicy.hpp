#pragma once

#include "cones.hpp"
#include "integer.hpp"
#include "k3_existence.hpp"
#include "lattice.hpp"
#include "pipeline.hpp"
#include "qform.hpp"
#include "ratsurf.hpp"
#include "report_io.hpp"
#include "run_config.hpp"
#include "vanishing.hpp"
