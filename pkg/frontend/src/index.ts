export {
  Engine,
  EngineError,
  BinaryNotFoundError,
  HandshakeError,
  Ref,
  ref,
  renderStatement,
  type Arg,
  type NamedArgs,
  type ConnectOptions,
} from "./client.js";
export { ProtocolError, parseResponse, responseShape, type EngineResponse } from "./protocol.js";
export {
  egoNetwork,
  randomWalk,
  mulberry32,
  type EgoNetworkResult,
} from "./sampling.js";
