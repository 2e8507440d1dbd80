#pragma once

#include "wordmap/catalogue.hpp"
#include "wordmap/error.hpp"
#include "wordmap/eval.hpp"
#include "wordmap/jets.hpp"
#include "wordmap/literal.hpp"
#include "wordmap/matrix.hpp"
#include "wordmap/parse.hpp"
#include "wordmap/rings.hpp"
#include "wordmap/rootsys.hpp"
#include "wordmap/sl2.hpp"
#include "wordmap/word.hpp"
