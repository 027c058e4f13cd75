// Umbrella header: the whole qroot library.
#ifndef QROOT_QROOT_HPP
#define QROOT_QROOT_HPP

#include "qroot/core/errors.hpp"
#include "qroot/core/multi_poly.hpp"
#include "qroot/core/rat_fun.hpp"
#include "qroot/core/rational.hpp"
#include "qroot/core/upoly.hpp"
#include "qroot/cyclo/cyclo_rat.hpp"
#include "qroot/cyclo/cyclotomic.hpp"
#include "qroot/qseries/formal.hpp"
#include "qroot/qseries/pochhammer.hpp"
#include "qroot/qseries/scene.hpp"
#include "qroot/qseries/series.hpp"
#include "qroot/qseries/specialize.hpp"
#include "qroot/verify/emit.hpp"
#include "qroot/verify/formal_checks.hpp"
#include "qroot/verify/parallel.hpp"
#include "qroot/verify/report.hpp"
#include "qroot/verify/root_checks.hpp"
#include "qroot/verify/sweep.hpp"

#endif  // QROOT_QROOT_HPP
