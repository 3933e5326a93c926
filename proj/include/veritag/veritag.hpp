#pragma once

#include "veritag/corpus/manifest.hpp"
#include "veritag/corpus/political_filter.hpp"
#include "veritag/corpus/sampling.hpp"
#include "veritag/error.hpp"
#include "veritag/eval/metrics.hpp"
#include "veritag/eval/protocols.hpp"
#include "veritag/eval/reports.hpp"
#include "veritag/eval/terms.hpp"
#include "veritag/featureset/extract.hpp"
#include "veritag/featureset/matrix_io.hpp"
#include "veritag/featureset/pruning.hpp"
#include "veritag/featureset/schema.hpp"
#include "veritag/featureset/standardizer.hpp"
#include "veritag/label.hpp"
#include "veritag/linguistics/dictionary.hpp"
#include "veritag/linguistics/morphology.hpp"
#include "veritag/linguistics/pos_tagger.hpp"
#include "veritag/linguistics/readability.hpp"
#include "veritag/linguistics/tokenizer.hpp"
#include "veritag/markup/article.hpp"
#include "veritag/markup/features.hpp"
#include "veritag/markup/html.hpp"
#include "veritag/models/pipeline.hpp"
#include "veritag/selection/importance.hpp"
#include "veritag/version.hpp"
