#pragma once

#include "sgcf/chip_firing.hpp"
#include "sgcf/configuration.hpp"
#include "sgcf/configurations.hpp"
#include "sgcf/critical_group.hpp"
#include "sgcf/error.hpp"
#include "sgcf/families.hpp"
#include "sgcf/matrix.hpp"
#include "sgcf/rational.hpp"
#include "sgcf/signed_graph.hpp"
