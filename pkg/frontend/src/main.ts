/**
 * Browser entry point: boots the app against the API base URL named by the
 * page's `api-base` meta tag (default: the local server's default port).
 */

import { ApiClient } from "./api.js";
import { App } from "./app.js";

const root = document.getElementById("app");
if (root) {
  const meta = document.querySelector('meta[name="api-base"]') as HTMLMetaElement | null;
  const baseUrl = (meta?.content || "http://127.0.0.1:8787").replace(/\/$/, "");
  new App(root, new ApiClient(baseUrl));
}
