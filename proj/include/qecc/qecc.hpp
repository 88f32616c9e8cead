#pragma once

// Umbrella header for the stabilizer QEC workbench.

#include "qecc/binary_matrix.hpp"
#include "qecc/catalog.hpp"
#include "qecc/decoder.hpp"
#include "qecc/dense.hpp"
#include "qecc/errors.hpp"
#include "qecc/experiments.hpp"
#include "qecc/noise.hpp"
#include "qecc/pauli.hpp"
#include "qecc/rng.hpp"
#include "qecc/stabilizer.hpp"
