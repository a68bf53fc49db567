#pragma once

#include "wpl/lgroup.hpp"
#include "wpl/element_syntax.hpp"
#include "wpl/smith.hpp"
#include "wpl/quotient.hpp"
#include "wpl/extension_bundle.hpp"
#include "wpl/k0.hpp"
#include "wpl/bundles.hpp"
#include "wpl/union_find.hpp"
#include "wpl/orbits.hpp"
#include "wpl/stable.hpp"
#include "wpl/quiver.hpp"
