#pragma once

#include "hyperdual/contract.hpp"
#include "hyperdual/hypergraph.hpp"
#include "hyperdual/json_io.hpp"
#include "hyperdual/junction.hpp"
#include "hyperdual/model.hpp"
#include "hyperdual/oracle.hpp"
#include "hyperdual/tensor.hpp"
#include "hyperdual/zoo.hpp"
