#pragma once

#include "wordrep/constructions.hpp"
#include "wordrep/error.hpp"
#include "wordrep/graph.hpp"
#include "wordrep/graph_io.hpp"
#include "wordrep/obf.hpp"
#include "wordrep/search.hpp"
#include "wordrep/symbol.hpp"
#include "wordrep/word.hpp"
#include "wordrep/word_io.hpp"
