#pragma once

#include "coxa/affine.hpp"
#include "coxa/appendix.hpp"
#include "coxa/cosets.hpp"
#include "coxa/descent_cases.hpp"
#include "coxa/error.hpp"
#include "coxa/finite.hpp"
#include "coxa/format.hpp"
#include "coxa/hecke.hpp"
#include "coxa/laurent.hpp"
#include "coxa/perm.hpp"
#include "coxa/selfcheck.hpp"
#include "coxa/tower.hpp"
#include "coxa/word.hpp"
