#pragma once

#include "fwatch/ais/checksum.hpp"
#include "fwatch/ais/decoder.hpp"
#include "fwatch/ais/encode.hpp"
#include "fwatch/ais/fragments.hpp"
#include "fwatch/ais/frame.hpp"
#include "fwatch/ais/messages.hpp"
#include "fwatch/effort/detector.hpp"
#include "fwatch/effort/records.hpp"
#include "fwatch/grid/grid.hpp"
#include "fwatch/identity/profile.hpp"
#include "fwatch/identity/registry.hpp"
#include "fwatch/service/api.hpp"
#include "fwatch/service/config.hpp"
#include "fwatch/service/pipeline.hpp"
#include "fwatch/track/persist.hpp"
#include "fwatch/track/store.hpp"
#include "fwatch/zone/geojson.hpp"
#include "fwatch/zone/report.hpp"
#include "fwatch/zone/violations.hpp"
