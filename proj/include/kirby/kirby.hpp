#pragma once

#include "kirby/constructions.hpp"
#include "kirby/diagram.hpp"
#include "kirby/forms.hpp"
#include "kirby/homology.hpp"
#include "kirby/legendrian.hpp"
#include "kirby/linalg.hpp"
#include "kirby/moves.hpp"
#include "kirby/script.hpp"
#include "kirby/surgery.hpp"
