import { createApp } from "./app.js";

declare global {
  interface Window {
    TYPEFLOW_API_BASE?: string;
  }
}

const root = document.getElementById("app");
if (root) {
  createApp(root, { baseUrl: window.TYPEFLOW_API_BASE ?? "" }).start();
}
