#pragma once

#include "ontogen/completion.hpp"
#include "ontogen/consistency.hpp"
#include "ontogen/corpus_cleaner.hpp"
#include "ontogen/correction.hpp"
#include "ontogen/dot_export.hpp"
#include "ontogen/pipeline.hpp"
#include "ontogen/rdf_io.hpp"
#include "ontogen/refinement.hpp"
