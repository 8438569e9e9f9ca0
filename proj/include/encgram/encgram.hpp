#ifndef ENCGRAM_ENCGRAM_HPP
#define ENCGRAM_ENCGRAM_HPP

// Umbrella header: the whole library in one include.

#include "encgram/channel_def.hpp"
#include "encgram/civil_time.hpp"
#include "encgram/codec.hpp"
#include "encgram/color.hpp"
#include "encgram/completed.hpp"
#include "encgram/dataset.hpp"
#include "encgram/encoder.hpp"
#include "encgram/encoding.hpp"
#include "encgram/errors.hpp"
#include "encgram/fill.hpp"
#include "encgram/json_util.hpp"
#include "encgram/render.hpp"
#include "encgram/result.hpp"
#include "encgram/scalar.hpp"
#include "encgram/scale.hpp"
#include "encgram/spec_io.hpp"
#include "encgram/svg.hpp"
#include "encgram/validator.hpp"

#endif  // ENCGRAM_ENCGRAM_HPP
