import { ReviewApi } from "./api.js";
import { App } from "./app.js";

const root = document.getElementById("app");
if (!root) {
  throw new Error("missing #app element");
}
// the client is served by the review service itself, one level below /
const app = new App(new ReviewApi(""), root);
void app.start();
