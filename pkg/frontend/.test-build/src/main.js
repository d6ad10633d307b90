import { startWorkbench } from "./ui.js";
startWorkbench();
