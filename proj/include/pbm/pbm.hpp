#pragma once

#include "pbm/block_space.hpp"
#include "pbm/chain.hpp"
#include "pbm/codes.hpp"
#include "pbm/error.hpp"
#include "pbm/mset.hpp"
#include "pbm/oracle.hpp"
#include "pbm/pomset.hpp"
#include "pbm/sweep.hpp"
#include "pbm/verify.hpp"
