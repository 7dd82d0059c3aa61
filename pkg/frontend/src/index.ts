export { GatewayClient, GatewayError, LatestWins, isAbort } from "./client.js";
export { paperContextQuery, personProfileQuery } from "./queries.js";
export { renderPaperWidget, type PaperWidgetConfig } from "./paperWidget.js";
export { renderProfileWidget, type ProfileWidgetConfig } from "./profileWidget.js";
export {
  buildFilters,
  counterText,
  renderFacetWidget,
  type FacetState,
  type FacetWidgetConfig,
} from "./facetWidget.js";
export * from "./types.js";
