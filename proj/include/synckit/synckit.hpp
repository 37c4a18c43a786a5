#pragma once

#include "synckit/bitset.hpp"
#include "synckit/catalog.hpp"
#include "synckit/clique.hpp"
#include "synckit/coloring.hpp"
#include "synckit/dfa.hpp"
#include "synckit/endo.hpp"
#include "synckit/errors.hpp"
#include "synckit/exact_cover.hpp"
#include "synckit/gf.hpp"
#include "synckit/graph.hpp"
#include "synckit/io.hpp"
#include "synckit/monoid.hpp"
#include "synckit/perm.hpp"
#include "synckit/perm_group.hpp"
#include "synckit/rng.hpp"
#include "synckit/sync.hpp"
#include "synckit/transform.hpp"
#include "synckit/word.hpp"
