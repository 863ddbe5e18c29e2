#pragma once

#include "tev/closed_forms.hpp"
#include "tev/enumerativity.hpp"
#include "tev/errors.hpp"
#include "tev/exact.hpp"
#include "tev/jacobian.hpp"
#include "tev/params.hpp"
#include "tev/quantum_proj.hpp"
#include "tev/schubert.hpp"
#include "tev/trunc_poly.hpp"
#include "tev/uni_poly.hpp"
