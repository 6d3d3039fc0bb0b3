#pragma once

#include "relcoh/cochain.hpp"
#include "relcoh/complex.hpp"
#include "relcoh/dual.hpp"
#include "relcoh/errors.hpp"
#include "relcoh/exact_linalg.hpp"
#include "relcoh/forest.hpp"
#include "relcoh/generators.hpp"
#include "relcoh/io_off.hpp"
#include "relcoh/io_report.hpp"
#include "relcoh/io_vtk.hpp"
#include "relcoh/meshgen.hpp"
#include "relcoh/oracle.hpp"
#include "relcoh/scaling.hpp"
#include "relcoh/transport.hpp"
