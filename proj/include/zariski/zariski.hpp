#pragma once

#include "zariski/closure.hpp"
#include "zariski/coprime.hpp"
#include "zariski/ideal.hpp"
#include "zariski/intmatrix.hpp"
#include "zariski/lattice.hpp"
#include "zariski/mgroup.hpp"
#include "zariski/multipoly.hpp"
#include "zariski/ratmatrix.hpp"
#include "zariski/rational.hpp"
#include "zariski/serialize.hpp"
#include "zariski/spectral.hpp"
#include "zariski/toric.hpp"
#include "zariski/unipoly.hpp"
