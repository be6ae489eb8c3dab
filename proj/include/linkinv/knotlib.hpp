#pragma once

namespace linkinv {

} // namespace linkinv
