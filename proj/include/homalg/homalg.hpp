#ifndef HOMALG_HOMALG_HPP
#define HOMALG_HOMALG_HPP

#include "homalg/scalars.hpp"
#include "homalg/lincomb.hpp"
#include "homalg/polyalg.hpp"
#include "homalg/uea_sl2.hpp"
#include "homalg/homcore.hpp"
#include "homalg/actions.hpp"
#include "homalg/finalg.hpp"
#include "homalg/scenario.hpp"

#endif
