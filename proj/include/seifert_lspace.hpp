#pragma once

#include "seifert_lspace/error.hpp"
#include "seifert_lspace/exact_arith.hpp"
#include "seifert_lspace/stern_brocot.hpp"
#include "seifert_lspace/seifert.hpp"
#include "seifert_lspace/lspace.hpp"
#include "seifert_lspace/parallel.hpp"
#include "seifert_lspace/twist.hpp"
#include "seifert_lspace/families.hpp"
#include "seifert_lspace/corpus.hpp"
